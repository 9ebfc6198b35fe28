package fx;

public class Aluno {

    private String nome;
    private String cpf;
    private String email;
    private int idade;

    public String getNome() { return nome; }
    public void setNome(String v) { nome = v; }
    public String getCpf() { return cpf; }
    public void setCpf(String v) { cpf = v; }
    public String getEmail() { return email; }
    public void setEmail(String v) { email = v; }
    public int getIdade() { return idade; }
    public void setIdade(int v) { idade = v; }
}
